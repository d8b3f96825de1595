// Umbrella header for the Hurwitz continued fraction library.
#pragma once

#include "hcf/error.hpp"
#include "hcf/gaussian.hpp"
#include "hcf/interval.hpp"
#include "hcf/surd.hpp"
#include "hcf/expansion.hpp"
#include "hcf/region.hpp"
#include "hcf/periodic.hpp"
#include "hcf/words.hpp"
#include "hcf/serialize.hpp"
#include "hcf/harness.hpp"
