#pragma once

#include "eulerx/exactnum.hpp"
#include "eulerx/identities.hpp"
#include "eulerx/json.hpp"
#include "eulerx/polyfamilies.hpp"
#include "eulerx/rat.hpp"
#include "eulerx/series.hpp"
#include "eulerx/transforms.hpp"
