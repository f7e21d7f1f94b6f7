#ifndef BJORTHO_BJORTHO_HPP
#define BJORTHO_BJORTHO_HPP

#include "error.hpp"
#include "vector.hpp"
#include "norm.hpp"
#include "norm_json.hpp"
#include "minimize.hpp"
#include "ortho.hpp"
#include "cone2d.hpp"
#include "highdim.hpp"
#include "oracle.hpp"

#endif // BJORTHO_BJORTHO_HPP
