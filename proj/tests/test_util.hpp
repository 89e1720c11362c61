#pragma once

#include <gtest/gtest.h>

#include "emel/numeric.hpp"

inline double dist(const emel::Complex& a, const emel::Complex& b)
{
    return static_cast<double>(emel::abs(a - b));
}

inline emel::Complex cx(double re, double im) { return emel::Complex(emel::Real(re), emel::Real(im)); }
