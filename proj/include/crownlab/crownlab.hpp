#pragma once

#include "crownlab/convex_geometry.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/horospherical.hpp"
#include "crownlab/lie_core.hpp"
#include "crownlab/manin.hpp"
#include "crownlab/matrix_core.hpp"
#include "crownlab/parallel.hpp"
#include "crownlab/realform.hpp"
#include "crownlab/rng.hpp"
#include "crownlab/types.hpp"
#include "crownlab/verify.hpp"
