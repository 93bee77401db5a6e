public class CustomerTransformer extends AddressTransformer {
    public String transformCustomer(Customer customer) {
        return "The contact person for this order is "
                + customer.getName() + " " + customer.getSurname() + "\n"
                + this.transformAddress(customer.getAddress());
    }
}
