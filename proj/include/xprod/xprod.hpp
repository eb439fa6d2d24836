#pragma once

#include "cayley_dickson.hpp"
#include "errors.hpp"
#include "falsify.hpp"
#include "identity.hpp"
#include "isomorphism.hpp"
#include "json_io.hpp"
#include "product_table.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "vector.hpp"
