#pragma once

#include "coringlab/algebra.hpp"
#include "coringlab/bimod.hpp"
#include "coringlab/cache.hpp"
#include "coringlab/check_report.hpp"
#include "coringlab/comod.hpp"
#include "coringlab/comonadlab.hpp"
#include "coringlab/corings.hpp"
#include "coringlab/corpus.hpp"
#include "coringlab/errors.hpp"
#include "coringlab/exactla.hpp"
#include "coringlab/field.hpp"
#include "coringlab/galois.hpp"
#include "coringlab/io.hpp"
#include "coringlab/modprops.hpp"
#include "coringlab/random.hpp"
#include "coringlab/rings.hpp"
