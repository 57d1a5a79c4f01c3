#pragma once

#include "stlab/algebra.hpp"
#include "stlab/bits.hpp"
#include "stlab/core.hpp"
#include "stlab/error.hpp"
#include "stlab/even.hpp"
#include "stlab/io.hpp"
#include "stlab/odd.hpp"
#include "stlab/parallel.hpp"
#include "stlab/poset.hpp"
