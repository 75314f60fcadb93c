#ifndef DYSON_DYSON_HPP
#define DYSON_DYSON_HPP

#include "analytic_bounds.hpp"
#include "bigint.hpp"
#include "commands.hpp"
#include "conjectures.hpp"
#include "convexity.hpp"
#include "known_values.hpp"
#include "max_product.hpp"
#include "output.hpp"
#include "partition.hpp"
#include "rank_table.hpp"
#include "table_cache.hpp"

#endif
