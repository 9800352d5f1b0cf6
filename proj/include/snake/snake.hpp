#pragma once

// Exact combinatorics of segments, ladders, lattice paths and l-weights for
// quantum loop algebras in type A.

#include "snake/census.hpp"
#include "snake/characters.hpp"
#include "snake/io.hpp"
#include "snake/lweight.hpp"
#include "snake/multisegment.hpp"
#include "snake/path.hpp"
#include "snake/path_tuple.hpp"
#include "snake/rank.hpp"
#include "snake/segment.hpp"
