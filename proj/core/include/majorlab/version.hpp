#ifndef MAJORLAB_VERSION_HPP
#define MAJORLAB_VERSION_HPP

namespace majorlab {

inline constexpr const char* kArtifactVersion = "0.1.0";

}

#endif
