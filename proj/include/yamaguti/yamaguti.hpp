#pragma once

#include "yamaguti/scalar.hpp"
#include "yamaguti/linalg.hpp"
#include "yamaguti/report.hpp"
#include "yamaguti/tensor.hpp"
#include "yamaguti/ly_algebra.hpp"
#include "yamaguti/representation.hpp"
#include "yamaguti/quadratic.hpp"
#include "yamaguti/pre_ly.hpp"
#include "yamaguti/rbo.hpp"
#include "yamaguti/symplectic.hpp"
#include "yamaguti/phase_space.hpp"
#include "yamaguti/expression.hpp"
#include "yamaguti/document.hpp"
