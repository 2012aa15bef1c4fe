namespace hyc {}
