#ifndef L2BOOST_VERSION_HPP
#define L2BOOST_VERSION_HPP

namespace l2boost {

inline constexpr const char* kVersion = "0.1.0";

} // namespace l2boost

#endif
