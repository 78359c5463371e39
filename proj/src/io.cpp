#include "tfe/catalog.hpp"
