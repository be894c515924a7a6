#pragma once

#include "tcat/diffusion.hpp"
#include "tcat/error.hpp"
#include "tcat/random.hpp"
#include "tcat/regimes.hpp"
#include "tcat/reynolds.hpp"
#include "tcat/series.hpp"
#include "tcat/synth.hpp"
