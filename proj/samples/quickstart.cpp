// Small tour: XOR certificate and synthesis, then two-step majority control.

#include <bnctl/bnctl.hpp>

#include <iostream>

using namespace bnctl;

int main()
{
  // x1' = x2 ^ x3, x2' = x1 ^ x2 ^ x3, x3' = x1
  auto const xor3 = example_xor3();
  for ( node_index i = 1; i <= 3; ++i )
  {
    auto const cert = is_controllable_xor( xor3, control_node_set{ i } );
    std::cout << "U = {x" << i << "}: rank " << cert.rank() << ( cert.controllable ? ", controllable\n" : ", not controllable\n" );
  }

  auto const u = control_node_set{ 2 };
  auto const a = gf2_vector::from_string( "001" ), b = gf2_vector::from_string( "010" );
  auto const scheme = synthesize_control( xor3.xor_matrix(), u, *basis_schedule( xor3.xor_matrix(), u ), a, b );
  auto const tr = simulate( xor3, u, a, scheme );
  for ( std::size_t t = 0; t < scheme.steps(); ++t )
    std::cout << "x(" << t << ") = " << tr.states[t] << "  u(" << t << ") = " << scheme.signals[t] << "\n";
  std::cout << "x(" << scheme.steps() << ") = " << tr.final_state() << "\n\n";

  // 3-in majority network, greedy extraction, drive in two steps
  auto const maj = example_majority7();
  auto const ext = greedy_extraction( maj );
  auto const um = control_set_from_extraction( ext, maj.size() );
  std::cout << "majority7: p = " << ext.p() << ", |R| = " << ext.residual.size() << ", |U| = " << um.size() << "\n";
  auto const from = gf2_vector::from_string( "1111000" ), to = gf2_vector::from_string( "0101011" );
  auto const two = two_step_control( maj, ext, from, to );
  std::cout << "reached " << to << ": " << ( verify_scheme( maj, um, from, to, two ) ? "yes" : "no" ) << "\n";
  std::cout << "upper bound on |U| for n = 7, K = 3: " << general_upper_bound( 7, 1, bound_family::majority_odd ) << "\n";
}
