#pragma once

#include "qlay/cnf.hpp"
#include "qlay/dpll.hpp"
#include "qlay/draw.hpp"
#include "qlay/error.hpp"
#include "qlay/families.hpp"
#include "qlay/io.hpp"
#include "qlay/layout.hpp"
#include "qlay/poset.hpp"
#include "qlay/solver.hpp"
#include "qlay/verify.hpp"
