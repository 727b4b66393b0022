#ifndef KERNDICT_KERNDICT_HPP
#define KERNDICT_KERNDICT_HPP

#include "kerndict/bounds.hpp"
#include "kerndict/diversity.hpp"
#include "kerndict/entropy.hpp"
#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"
#include "kerndict/kernels.hpp"
#include "kerndict/sparsify.hpp"

#endif  // KERNDICT_KERNDICT_HPP
