#pragma once

namespace actinwire {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// CODATA 2018
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;   // F/m
inline constexpr double kVacuumPermeability = 1.25663706212e-6;   // H/m

}  // namespace actinwire
