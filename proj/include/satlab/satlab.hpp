#ifndef SATLAB_SATLAB_HPP
#define SATLAB_SATLAB_HPP

#include "canonical.hpp"
#include "count.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "random.hpp"
#include "saturation.hpp"
#include "verify.hpp"

#endif
