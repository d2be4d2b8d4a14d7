# Test package for dampsearch
