#pragma once

#include "polychow/error.hpp"
#include "polychow/rational.hpp"
#include "polychow/geometry.hpp"
#include "polychow/counting.hpp"
#include "polychow/chow.hpp"
#include "polychow/blowup.hpp"
#include "polychow/stability.hpp"
#include "polychow/catalog.hpp"
