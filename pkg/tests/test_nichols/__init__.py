# Tests for YD modules, braidings, the classifier and the symmetrizer engine
