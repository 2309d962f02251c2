#pragma once

#include "chain_complex.hpp"
#include "chromatic.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "hypergraph.hpp"
#include "ordered_partitions.hpp"
#include "rank.hpp"
#include "sparse_matrix.hpp"
#include "theorems.hpp"
#include "vertex_set.hpp"
