#pragma once

#include "eqlat/error.hpp"
#include "eqlat/lattice_io.hpp"
#include "eqlat/partition.hpp"
#include "eqlat/relation.hpp"
#include "eqlat/relation_laws.hpp"
#include "eqlat/sublattice.hpp"
#include "eqlat/transposition.hpp"
