/*!
  \file truth_value.hpp
  \brief Three-valued truth values {0, 1/2, 1} and the connective families
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bridgelab
{

/*! \brief Element of {0, 1/2, 1}, stored exactly as a count of halves (0, 1, 2). */
class truth_value
{
public:
  constexpr truth_value() = default;

  static constexpr truth_value from_halves( std::uint8_t halves )
  {
    if ( halves > 2u )
    {
      throw std::out_of_range( "truth value out of range" );
    }
    truth_value v;
    v._halves = halves;
    return v;
  }

  static constexpr truth_value zero() { return from_halves( 0 ); }
  static constexpr truth_value half() { return from_halves( 1 ); }
  static constexpr truth_value one() { return from_halves( 2 ); }

  constexpr std::uint8_t halves() const { return _halves; }
  constexpr bool is_classical() const { return _halves != 1u; }
  constexpr double as_double() const { return _halves / 2.0; }

  /* accepts 0, 0.5, 1 exactly */
  static truth_value from_double( double d )
  {
    if ( d == 0.0 )
      return zero();
    if ( d == 0.5 )
      return half();
    if ( d == 1.0 )
      return one();
    throw std::invalid_argument( "truth value must be 0, 0.5 or 1, got " + std::to_string( d ) );
  }

  std::string to_string() const
  {
    switch ( _halves )
    {
    case 0u:
      return "0";
    case 1u:
      return "0.5";
    default:
      return "1";
    }
  }

  constexpr auto operator<=>( truth_value const& ) const = default;

private:
  std::uint8_t _halves = 0;
};

inline constexpr truth_value tv_zero = truth_value::zero();
inline constexpr truth_value tv_half = truth_value::half();
inline constexpr truth_value tv_one = truth_value::one();

/* strong Kleene negation 1 - v */
constexpr truth_value neg( truth_value v )
{
  return truth_value::from_halves( static_cast<std::uint8_t>( 2u - v.halves() ) );
}

constexpr truth_value conj( truth_value a, truth_value b ) { return std::min( a, b ); }
constexpr truth_value disj( truth_value a, truth_value b ) { return std::max( a, b ); }

/*! \brief Conditional style; every other connective is shared by both families. */
enum class connective_family
{
  strong_kleene,
  cooper
};

constexpr truth_value cond( connective_family family, truth_value a, truth_value b )
{
  switch ( family )
  {
  case connective_family::cooper:
    /* consequent's value when the antecedent is 1 or 1/2, and 1/2 on a false antecedent */
    return a >= tv_half ? b : tv_half;
  case connective_family::strong_kleene:
  default:
    return disj( neg( a ), b );
  }
}

constexpr truth_value bicond( connective_family family, truth_value a, truth_value b )
{
  return conj( cond( family, a, b ), cond( family, b, a ) );
}

/* Bochvar-style meta-assertion: 1 stays 1, everything else collapses to 0 */
constexpr truth_value bochvar_simp( truth_value v )
{
  return v == tv_one ? tv_one : tv_zero;
}

enum class designation
{
  strict,
  tolerant,
  classical_true
};

/*! \brief Designation test.

  `classical_true` coincides with `strict` on values; the classical restriction itself
  is enforced by the enumerator, which never produces 1/2 for classical runs.
*/
constexpr bool designated( truth_value v, designation standard )
{
  switch ( standard )
  {
  case designation::tolerant:
    return v >= tv_half;
  case designation::strict:
  case designation::classical_true:
  default:
    return v == tv_one;
  }
}

inline std::string_view to_string( connective_family family )
{
  return family == connective_family::cooper ? "cooper" : "strong-kleene";
}

inline std::optional<connective_family> parse_family( std::string_view text )
{
  if ( text == "strong-kleene" || text == "sk" || text == "kleene" )
    return connective_family::strong_kleene;
  if ( text == "cooper" )
    return connective_family::cooper;
  return std::nullopt;
}

} // namespace bridgelab
