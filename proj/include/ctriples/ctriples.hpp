#pragma once

#include "core.hpp"
#include "format.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"
#include "permgroup.hpp"
#include "pipeline.hpp"
#include "series.hpp"
#include "wreath.hpp"
