"""Carbon Weave 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.89,
    "detail": 2,
    "roughness": 0.446,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
