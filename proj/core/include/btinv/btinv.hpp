#pragma once

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/diagnostics.hpp"
#include "btinv/factorization.hpp"
#include "btinv/gohberg_heinig.hpp"
#include "btinv/matrix.hpp"
#include "btinv/oracle.hpp"
#include "btinv/reflection.hpp"
#include "btinv/types.hpp"
#include "btinv/vector.hpp"
