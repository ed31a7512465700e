#pragma once

namespace tycat {

inline constexpr const char* kVersion = "0.1.0";

}
