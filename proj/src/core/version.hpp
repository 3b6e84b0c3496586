#ifndef CONTRAGRAPH_CORE_VERSION_HPP
#define CONTRAGRAPH_CORE_VERSION_HPP

namespace cg {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
