#pragma once

#include "affcore/errors.hpp"
#include "affcore/exactnum.hpp"
#include "affcore/cartan.hpp"
#include "affcore/abacus.hpp"
#include "affcore/action.hpp"
#include "affcore/uglov.hpp"
#include "affcore/weyl.hpp"
#include "affcore/dioph.hpp"
