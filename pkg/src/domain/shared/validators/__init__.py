# Validadores compartidos para toda la aplicación
