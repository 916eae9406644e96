#pragma once

#include "propb/constructions/abbott_hanson_toft.hpp"
#include "propb/constructions/abbott_moser.hpp"
#include "propb/constructions/block.hpp"
#include "propb/constructions/generalized_aht.hpp"
#include "propb/constructions/mathews.hpp"
#include "propb/constructions/multi_core.hpp"
