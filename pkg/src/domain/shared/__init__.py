# Este archivo permite que el directorio sea un paquete Python
