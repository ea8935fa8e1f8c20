#pragma once

namespace osg {

inline const char* version_string() { return "0.1.0"; }

} // namespace osg
