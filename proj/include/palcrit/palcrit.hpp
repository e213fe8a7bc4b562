#pragma once

#include "catalog.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "exponent.hpp"
#include "morphism.hpp"
#include "repetitions.hpp"
#include "search.hpp"
#include "verification.hpp"
#include "word.hpp"
