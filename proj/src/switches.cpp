#include "charvar/switches.hpp"

namespace charvar {

// Explicit instantiations for the two scalar backends.
template SwitchResult<Rat> triangle_switch_e0<Rat>(const Coords4<Rat>&,
                                                   const SignVector&, Tri);
template SwitchResult<double> triangle_switch_e0<double>(const Coords4<double>&,
                                                         const SignVector&,
                                                         Tri);
template SwitchResult<Rat> triangle_switch_e1<Rat>(const Coords4<Rat>&,
                                                   const SignVector&, Tri);
template SwitchResult<double> triangle_switch_e1<double>(const Coords4<double>&,
                                                         const SignVector&,
                                                         Tri);
template std::pair<EdgeLengths<Rat>, SignVector> switch_via_flips<Rat>(
    const EdgeLengths<Rat>&, const SignVector&, Tri);
template std::pair<EdgeLengths<double>, SignVector> switch_via_flips<double>(
    const EdgeLengths<double>&, const SignVector&, Tri);

}  // namespace charvar
