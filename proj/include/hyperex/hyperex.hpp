#pragma once

#include "bounds.hpp"
#include "cut_families.hpp"
#include "flow.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_ops.hpp"
#include "hyperbolicity.hpp"
#include "oracles.hpp"
#include "overlap.hpp"
#include "rational.hpp"
#include "sse.hpp"
#include "vulnerability.hpp"
#include "witness.hpp"
