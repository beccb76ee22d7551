/*!
  \file error.hpp
  \brief Error type shared by all bnctl modules
*/

#pragma once

#include <stdexcept>
#include <string>

namespace bnctl
{

/*! \brief Coarse error categories.
 *
 * The CLI maps each category onto a distinct process exit code.
 */
enum class errc
{
  invalid_argument,   ///< parameter out of range, malformed control set, ...
  dimension_mismatch, ///< vector/matrix/bitstring lengths disagree
  malformed_input,    ///< unparsable network or scheme file
  oracle_limit,       ///< brute-force search requested beyond the hard size cap
  internal            ///< an invariant that should be impossible to break was broken
};

class bn_error : public std::runtime_error
{
public:
  bn_error( errc code, std::string const& what ) : std::runtime_error( what ), code_( code ) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

namespace detail
{

[[noreturn]] inline void fail( errc code, std::string const& what )
{
  throw bn_error( code, what );
}

inline void require( bool cond, errc code, std::string const& what )
{
  if ( !cond )
    fail( code, what );
}

} // namespace detail

} // namespace bnctl
