# Este archivo hace que Python trate el directorio como un paquete