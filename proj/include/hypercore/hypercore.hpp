#pragma once

#include "hypercore/core_detector.hpp"
#include "hypercore/disk.hpp"
#include "hypercore/embedding.hpp"
#include "hypercore/family.hpp"
#include "hypercore/generators.hpp"
#include "hypercore/geodesics.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/hyperbolicity.hpp"
#include "hypercore/io.hpp"
#include "hypercore/measure.hpp"
#include "hypercore/tessellation.hpp"
#include "hypercore/traffic.hpp"
#include "hypercore/tree_analytics.hpp"
#include "hypercore/visual.hpp"
