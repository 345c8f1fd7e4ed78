#pragma once

// Rate-region outer bounds and executable codes for zero-error function
// computation on the three-source relay network.

#include "zefc/block_oracle.hpp"
#include "zefc/bounds.hpp"
#include "zefc/coding_schemes.hpp"
#include "zefc/demand_function.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"
#include "zefc/huffman.hpp"
#include "zefc/majorization.hpp"
#include "zefc/pair_structure.hpp"
#include "zefc/pmf.hpp"
#include "zefc/rational.hpp"
#include "zefc/report_json.hpp"
