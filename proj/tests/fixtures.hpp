#pragma once

#include "trisep/error.hpp"
#include "trisep/scene.hpp"

#include <doctest.h>

#include <random>
#include <vector>

namespace fixtures {

using trisep::IPoint;
using trisep::Scene;

// Axis-aligned blue square and four reds, one beyond each side. The polygon
// is a slightly turned square so no corner lines up with a blue diagonal.
inline Scene s1()
{
    Scene s;
    s.blue = {{-4, -4}, {4, -4}, {4, 4}, {-4, 4}};
    s.red = {{8, 2}, {2, 8}, {-8, 2}, {2, -8}};
    s.polygon = {{-20, -21}, {21, -20}, {20, 21}, {-21, 20}};
    return s;
}

// Blue square with corner at the origin and one red to its right.
inline Scene one_red()
{
    Scene s;
    s.blue = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    s.red = {{8, 2}};
    s.polygon = {{-22, -19}, {23, -17}, {23, 17}, {-21, 17}};
    return s;
}

// L-shaped environment with a reflex corner at (4, 3).
inline std::vector<IPoint> f1()
{
    return {{-10, -10}, {10, -10}, {10, 3}, {4, 3}, {4, 10}, {-10, 10}};
}

template <class F>
trisep::ErrorKind error_kind(F&& f)
{
    try {
        f();
    } catch (const trisep::Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return trisep::ErrorKind::InvalidArgument;
}

} // namespace fixtures
