#pragma once

#include "entrobox/diagonal.hpp"
#include "entrobox/taylor.hpp"

#include <string>
#include <vector>

namespace entrobox {

/// z on a disc of `radius` to (z, z^2, ..., z^degree), sup-norm codomain.
HoloSampler make_power_curve(std::size_t degree, double radius);

/// z to (z, z^2/2!, ..., z^terms/terms!), the entire-map truncation.
HoloSampler make_entire_exp(std::size_t terms, double radius);

/// (x_1..x_d) on the sup ball to (x_1, x_2^2, ..., x_d^d).
HoloSampler make_coordinate_powers(std::size_t dim, double radius);

/// Blockwise powers: coordinate j carries x_j^N on the N-th factorial block
/// of the sigma partition (N_max <= 5).
HoloSampler make_sigma_powers(std::size_t N_max, double radius);

/// Lookup by registry name: power-curve, entire-exp, coordinate-powers,
/// sigma-powers. `size` is the degree / term count / dimension / block cap.
HoloSampler make_sampler(const std::string& name, std::size_t size, double radius);

std::vector<std::string> sampler_names();

} // namespace entrobox
