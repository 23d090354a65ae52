#pragma once

#include "bicm/complex.hpp"
#include "bicm/gf.hpp"
#include "bicm/graph.hpp"
#include "bicm/homology.hpp"
#include "bicm/ideal.hpp"
#include "bicm/masks.hpp"
#include "bicm/verify.hpp"
