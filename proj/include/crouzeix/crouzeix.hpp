// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "crouzeix/classes.hpp"
#include "crouzeix/cyclic.hpp"
#include "crouzeix/diffmodel.hpp"
#include "crouzeix/errors.hpp"
#include "crouzeix/linalg.hpp"
#include "crouzeix/matrix.hpp"
#include "crouzeix/modelspace.hpp"
#include "crouzeix/numrange.hpp"
#include "crouzeix/ratio.hpp"
