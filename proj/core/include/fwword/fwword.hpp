#pragma once

#include "fwword/oracle.hpp"
#include "fwword/properties.hpp"
#include "fwword/reduction.hpp"
#include "fwword/types.hpp"
