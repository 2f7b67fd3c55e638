#pragma once

#include "fuzzylat/core.hpp"
#include "fuzzylat/frame.hpp"
#include "fuzzylat/gen.hpp"
#include "fuzzylat/laws.hpp"
#include "fuzzylat/morphism.hpp"
#include "fuzzylat/order.hpp"
#include "fuzzylat/product.hpp"
#include "fuzzylat/report.hpp"
#include "fuzzylat/samples.hpp"
#include "fuzzylat/tnorm.hpp"
