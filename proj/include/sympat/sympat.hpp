#pragma once

#include "sympat/error.hpp"
#include "sympat/pattern.hpp"
#include "sympat/affine_perm.hpp"
#include "sympat/coxeter_c.hpp"
#include "sympat/cells.hpp"
#include "sympat/mutations.hpp"
#include "sympat/moment_graph.hpp"
#include "sympat/linalg.hpp"
#include "sympat/poly.hpp"
#include "sympat/gkm.hpp"
#include "sympat/geometry.hpp"
#include "sympat/fixtures.hpp"
#include "sympat/json_io.hpp"
