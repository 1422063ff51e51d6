#pragma once

// Composite asymmetric error-correcting codes for combinatorial-composite
// DNA storage: data model, VT-syndrome machinery, Reed-Solomon-protected
// constructions with encoder/decoder, redundancy bounds, channel simulation
// and read-depth statistics.

#include "caecc/analysis.hpp"
#include "caecc/bigint.hpp"
#include "caecc/channel.hpp"
#include "caecc/codec.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"
#include "caecc/gf.hpp"
#include "caecc/io.hpp"
#include "caecc/rng.hpp"
#include "caecc/stats.hpp"
#include "caecc/syndrome.hpp"
