# interfaces package
