#ifndef WULFF_WULFF_HPP
#define WULFF_WULFF_HPP

#include "wulff/body.hpp"
#include "wulff/cone.hpp"
#include "wulff/construct.hpp"
#include "wulff/errors.hpp"
#include "wulff/geometry.hpp"
#include "wulff/harness.hpp"
#include "wulff/metric.hpp"
#include "wulff/nnls.hpp"
#include "wulff/shape_io.hpp"
#include "wulff/transforms.hpp"

#endif  // WULFF_WULFF_HPP
