// exprparse placeholder
