#ifndef NETINFO_VERSION_HPP
#define NETINFO_VERSION_HPP

namespace netinfo {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // NETINFO_VERSION_HPP
