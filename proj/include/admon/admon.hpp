#pragma once

#include "admon/word.hpp"
#include "admon/rewrite.hpp"
#include "admon/monoid.hpp"
#include "admon/confluence.hpp"
