// numeric placeholder
