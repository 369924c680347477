#pragma once

// Umbrella header for the ecokin library.

#include "ecokin/algebra.hpp"
#include "ecokin/benefit.hpp"
#include "ecokin/commands.hpp"
#include "ecokin/economy.hpp"
#include "ecokin/errors.hpp"
#include "ecokin/event.hpp"
#include "ecokin/frame.hpp"
#include "ecokin/interval.hpp"
#include "ecokin/lawcheck.hpp"
#include "ecokin/quotes.hpp"
#include "ecokin/radar.hpp"
#include "ecokin/rational.hpp"
#include "ecokin/report.hpp"
#include "ecokin/rng.hpp"
#include "ecokin/scenario.hpp"
#include "ecokin/transport.hpp"
#include "ecokin/twin.hpp"
#include "ecokin/worldline.hpp"
