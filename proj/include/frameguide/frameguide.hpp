#pragma once

#include "frameguide/acb.hpp"
#include "frameguide/bench.hpp"
#include "frameguide/catalog.hpp"
#include "frameguide/config.hpp"
#include "frameguide/engine.hpp"
#include "frameguide/error.hpp"
#include "frameguide/frame_io.hpp"
#include "frameguide/luminance.hpp"
#include "frameguide/rng.hpp"
#include "frameguide/simulator.hpp"
#include "frameguide/snapshot.hpp"
#include "frameguide/spatial.hpp"
#include "frameguide/sweep.hpp"
#include "frameguide/systems_io.hpp"
#include "frameguide/trace.hpp"
