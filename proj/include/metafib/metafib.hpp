#pragma once

#include "metafib/analysis.hpp"
#include "metafib/bfile.hpp"
#include "metafib/errors.hpp"
#include "metafib/properties.hpp"
#include "metafib/recursion.hpp"
#include "metafib/sequence.hpp"
#include "metafib/survey.hpp"
#include "metafib/validators.hpp"
