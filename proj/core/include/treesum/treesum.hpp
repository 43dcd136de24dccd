#pragma once

#include "treesum/baselines.hpp"
#include "treesum/error.hpp"
#include "treesum/generator.hpp"
#include "treesum/greedy.hpp"
#include "treesum/lca.hpp"
#include "treesum/metrics.hpp"
#include "treesum/ots.hpp"
#include "treesum/scoring.hpp"
#include "treesum/summary.hpp"
#include "treesum/tree.hpp"
#include "treesum/tsv.hpp"
#include "treesum/vtree.hpp"
