#pragma once

#include "builtin_classes.hpp"
#include "classify.hpp"
#include "cone.hpp"
#include "core.hpp"
#include "equivalence.hpp"
#include "fan.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "polytope.hpp"
#include "triangulate.hpp"
