#pragma once

#include "ppart/bijections.hpp"
#include "ppart/core.hpp"
#include "ppart/counting.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/errors.hpp"
#include "ppart/families.hpp"
#include "ppart/flips.hpp"
#include "ppart/generator.hpp"
#include "ppart/serialize.hpp"
#include "ppart/tree.hpp"
#include "ppart/verify.hpp"
