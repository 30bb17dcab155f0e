// Umbrella header.
#ifndef LENSCLASS_LENSCLASS_HPP
#define LENSCLASS_LENSCLASS_HPP

#include "lensclass/abelian.hpp"
#include "lensclass/cli.hpp"
#include "lensclass/classdata.hpp"
#include "lensclass/classify.hpp"
#include "lensclass/cyclotomic.hpp"
#include "lensclass/document.hpp"
#include "lensclass/lens.hpp"
#include "lensclass/modular.hpp"

#endif
