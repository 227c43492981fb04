#pragma once

#include "nutforge/canonical.hpp"
#include "nutforge/cyclotomic.hpp"
#include "nutforge/enumeration.hpp"
#include "nutforge/error.hpp"
#include "nutforge/exactla.hpp"
#include "nutforge/families.hpp"
#include "nutforge/feasibility.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/io.hpp"
#include "nutforge/matrix.hpp"
#include "nutforge/parallel.hpp"
#include "nutforge/polynomial.hpp"
#include "nutforge/pregraph.hpp"
#include "nutforge/presub.hpp"
#include "nutforge/search.hpp"
#include "nutforge/voltage.hpp"
