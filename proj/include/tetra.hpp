#pragma once

#include "tetra/bgcg.hpp"
#include "tetra/canon.hpp"
#include "tetra/census.hpp"
#include "tetra/error.hpp"
#include "tetra/families.hpp"
#include "tetra/identify.hpp"
#include "tetra/instances.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/order.hpp"
#include "tetra/partition.hpp"
#include "tetra/perm.hpp"
#include "tetra/permgroup.hpp"
#include "tetra/subgroups.hpp"
#include "tetra/symmetry.hpp"
