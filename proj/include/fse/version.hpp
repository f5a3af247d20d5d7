#ifndef FSE_VERSION_HPP
#define FSE_VERSION_HPP

namespace fse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fse

#endif
