#ifndef DESCENT_KIT_DESCENT_KIT_HPP
#define DESCENT_KIT_DESCENT_KIT_HPP

#include "arith.hpp"
#include "class_number.hpp"
#include "descent.hpp"
#include "lehmer.hpp"
#include "oracle.hpp"
#include "rep_solver.hpp"
#include "search.hpp"
#include "sequences.hpp"

#endif // DESCENT_KIT_DESCENT_KIT_HPP
