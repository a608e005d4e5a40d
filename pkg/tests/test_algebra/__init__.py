# Tests for the cyclotomic, linear algebra and Hopf algebra layer
