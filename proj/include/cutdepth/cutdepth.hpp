#pragma once

#include "cutdepth/bounds.hpp"
#include "cutdepth/constructions.hpp"
#include "cutdepth/corner.hpp"
#include "cutdepth/depth.hpp"
#include "cutdepth/error.hpp"
#include "cutdepth/linalg.hpp"
#include "cutdepth/lp.hpp"
#include "cutdepth/polyhedron.hpp"
