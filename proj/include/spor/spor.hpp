#pragma once

#include "spor/cluster_spanner.hpp"
#include "spor/components.hpp"
#include "spor/edge_sampler.hpp"
#include "spor/generators.hpp"
#include "spor/graph.hpp"
#include "spor/graph_io.hpp"
#include "spor/kcc_oracle.hpp"
#include "spor/oracle.hpp"
#include "spor/rng.hpp"
#include "spor/spanner_bs.hpp"
#include "spor/sss_oracle.hpp"
#include "spor/verify.hpp"
