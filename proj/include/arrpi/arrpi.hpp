#pragma once

// Exact computation of fundamental groups of complements of real line
// arrangements: braid monodromy via Lefschetz pairs, van Kampen
// presentations, and closed-form structure recognition.

#include "arrpi/analysis.hpp"
#include "arrpi/braid.hpp"
#include "arrpi/classify.hpp"
#include "arrpi/cli.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/io.hpp"
#include "arrpi/presentation.hpp"
#include "arrpi/rational.hpp"
#include "arrpi/vankampen.hpp"
